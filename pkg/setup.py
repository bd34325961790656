"""
Setup script for the entanglement_harvest package.
"""
from setuptools import setup, find_packages

setup(
    name="entanglement_harvest",
    version="0.1.0",
    author="Entanglement Harvest Team",
    author_email="example@example.com",
    description="Entanglement harvesting by localized detectors from scalar and gravitational vacua",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("tests", "tests.*", "examples", "examples.*")),
    include_package_data=True,
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.10.0",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "harvest=entanglement_harvest.__main__:main",
            "harvest-sweep=entanglement_harvest.scripts.run_sweep:main",
            "harvest-preset=entanglement_harvest.scripts.run_preset:main",
        ],
    },
)
