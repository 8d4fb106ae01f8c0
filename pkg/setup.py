from setuptools import find_packages, setup

setup(
    name='tautchern',
    version='0.1.0',
    description='Exact Chern characters of pushforwards of universal line bundles on moduli of curves',
    packages=find_packages(include=['src', 'src.*']),
    py_modules=['main'],
    python_requires='>=3.8',
    install_requires=['sympy>=1.12'],
    extras_require={'test': ['numpy>=1.24', 'pytest>=7.4']},
    entry_points={'console_scripts': ['tautchern=main:main']},
)
