#!/usr/bin/env python3
from setuptools import find_packages, setup

from hopf_kernels.__about__ import __title__, __version__

setup(
    name=__title__,
    version=__version__,
    license='MIT License',
    description='Exact kernels of representations and central characters of semisimple Hopf algebras',
    python_requires='>=3.8',
    install_requires=[
        'appdirs >= 1.4',
        'colorlog >= 4.2.1',
        'Mako >= 1.1',
        'mpmath >= 1.1',
        'sympy >= 1.6',
        'toml >= 0.10',
    ],
    packages=find_packages(exclude=('tests', 'docs')),
    package_data={
        'hopf_kernels_resources': ['*', 'template/*'],
    },
    entry_points={
        'console_scripts': [
            'hopf-kernels = hopf_kernels.main:main',
        ],
    },
)
