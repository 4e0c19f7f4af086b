from setuptools import setup

with open("README.md", "r") as f:
    long_description = f.read()

setup(
    name="inversive_geometry",
    version="0.1.0",
    description="Exact inversive geometry over anisotropic quadratic spaces",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["inversive_geometry"],
    install_requires=[
        "numpy",
        "pandas",
        "matplotlib",
        "seaborn",
        "sympy",
        "click",
    ],
    entry_points={
        "console_scripts": [
            "inversive=inversive_geometry.cli:main",
        ],
    },
    license="Apache License 2.0",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
