from setuptools import setup, find_packages

PACKAGE_NAME = "ossermanCliff"

setup(
    name=PACKAGE_NAME,
    version="0.1.0",
    description="Osserman curvature tensors: Clifford structures, spectral checks, recovery and the Cayley-plane obstruction",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    package_data={PACKAGE_NAME: ["io/schemas/*.json"]},
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.7",
        "pandas>=1.3",
        "tqdm>=4.62",
        "typer[all]>=0.9",
        "rich>=13.0",
        "jsonschema>=4.0",
    ],
    extras_require={
        "test": ["pytest>=8.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": [
            "ossermanCliff = ossermanCliff.cli:app"
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
    ],
)
