from setuptools import setup, find_packages

setup(
    name='steinberg_schur',
    version='1.0.0',
    description='Build Steinberg groups over finite Phi-rings and verify their Schur multipliers.',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    install_requires=['numpy', 'pandas', 'pyyaml', 'sympy', 'galois'],
    package_data={'steinberg_schur': ['*.yml']},
    entry_points={'console_scripts': ['steinberg-schur=steinberg_schur.cli:main']},
)
