#!/usr/bin/env python3
"""
mapwalk - Vertex-face quantum walks on orientable maps
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read README
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text(encoding="utf-8")

setup(
    name="mapwalk",
    version="0.1.0",
    author="mapwalk developers",
    description="Exact spectra, state transfer and periodicity of vertex-face quantum walks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    keywords=[
        "quantum walk",
        "combinatorial maps",
        "graph embeddings",
        "perfect state transfer",
        "periodicity",
    ],
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.24.0",
        "pandas>=1.5.0",
        "matplotlib>=3.6.0",
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "pyyaml>=6.0",
        "python-dotenv>=0.19.0",
        "loguru>=0.6.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=3.0.0",
            "black>=22.0.0",
            "ruff>=0.1.0",
            "mypy>=0.950",
        ],
    },
    entry_points={
        "console_scripts": [
            "mapwalk=mapwalk.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "mapwalk": ["py.typed"],
    },
)
