#!/usr/bin/env python3
"""
Setup script for paging-lab
"""

from setuptools import setup, find_packages

setup(
    name="paging-lab",
    version="0.1.0",
    description="Deterministic paging-simulation laboratory with bound validation",
    author="Paging Lab Team",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["main"],
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.21.0",
        "json5>=0.9.0",
        "psutil>=5.8.0",
        "python-dotenv>=1.0.0",
        "pandas>=1.5.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "pytest-mock>=3.12.0",
            "black>=22.0.0",
            "flake8>=5.0.0",
            "mypy>=1.0.0",
            "pre-commit>=2.20.0",
        ]
    },
    entry_points={
        "console_scripts": ["paging-lab=main:main"],
    },
)
