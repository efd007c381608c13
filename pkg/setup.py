from setuptools import setup, find_packages

setup(
    name="kblowup",
    version="0.1.0",
    packages=find_packages(include=["kblowup", "kblowup.*"]),
    install_requires=[
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "numpy>=1.24.0",
        "sympy>=1.12",
        "loguru>=0.7.0",
        "typer>=0.9.0",
        "click>=8.1.0",
        "rich>=13.0.0",
    ],
)
