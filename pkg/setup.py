#!/usr/bin/env python3
"""
Setup script for Corr CLI
"""

from setuptools import setup, find_packages

# Read README for long description
def read_readme():
    with open("README.md", "r", encoding="utf-8") as f:
        return f.read()

# Read requirements
def read_requirements():
    with open("requirements.txt", "r", encoding="utf-8") as f:
        return [line.strip() for line in f if line.strip() and not line.startswith("#")]

setup(
    name="corr-cli",
    version="1.0.0",
    description="Exact verification of modular-functor correlators built from Frobenius algebras",
    long_description=read_readme(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    data_files=[
        ("share/corr-cli/data", ["data/toric.json", "data/vect.json", "data/fib.json", "data/fib_rev.json",
                                 "data/fib2.json", "data/dz2_hopf.json", "data/rep_z2_symmetric.json"]),
        ("share/corr-cli/data/algebras", ["data/algebras/toric_1e.json", "data/algebras/toric_1m.json",
                                          "data/algebras/toric_1f.json", "data/algebras/toric_unit.json",
                                          "data/algebras/vect_unit.json", "data/algebras/dz2_unit.json",
                                          "data/algebras/fib2_canonical.json"]),
        ("share/corr-cli/data/markings", ["data/markings/pants.json", "data/markings/four_holed_sphere.json",
                                          "data/markings/one_holed_torus.json", "data/markings/two_pants.json"]),
    ],
    entry_points={
        "console_scripts": [
            "corr-cli=corrcli.cli:main",
        ],
    },
    install_requires=read_requirements(),
    extras_require={
        "test": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "pytest-xdist>=3.3.1",
            "pytest-timeout>=2.1.0",
            "hypothesis>=6.80.0",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Operating System :: OS Independent",
        "Environment :: Console",
    ],
    python_requires=">=3.8",
    keywords="modular tensor category frobenius algebra correlators conformal field theory",
)
