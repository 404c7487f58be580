"""
Setup script for the simultaneous root finder.
"""

from setuptools import setup, find_packages

setup(
    name="vieta-roots",
    version="1.0.0",
    description="Weierstrass-Kerner and Chebyshev simultaneous polynomial root finding on the Vieta system",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20.0",
        "pandas>=1.3.0",
        "scipy>=1.7.0",
        "joblib>=1.0.0",
    ],
    extras_require={
        "excel": ["openpyxl>=3.0.0"],
        "dev": ["pytest>=7.0.0", "hypothesis>=6.0.0"],
    },
    entry_points={
        "console_scripts": [
            "vieta-roots=cli.app:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
)
