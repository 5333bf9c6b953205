#!/usr/bin/env python

from setuptools import setup, find_packages

setup(
    name="random_circuit_codes",
    use_scm_version=True,
    setup_requires=["setuptools_scm"],
    description="Low-depth random circuit codes: tensor network decoding, erasure fault tolerance and thresholds.",
    packages=find_packages(exclude=["test", "test.*"]),
    include_package_data=True,
    install_requires=[
        "click",
        "colorama",
        "oyaml>=0.8",
        "pyyaml>=5.0",
        "invoke",
        "numpy>=1.20",
        "scipy>=1.6",
    ],
    tests_require=[
        "pytest",
        "pytest-mock",
        "pytest-cov",
        "pylint",
        "pytest-pylint",
        "hypothesis",
    ],
    python_requires=">=3.8",
    entry_points={"console_scripts": ["rcc=random_circuit_codes.cmdline:cli"]},
)
