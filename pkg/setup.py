import os
from setuptools import setup, find_packages

root_dir = os.path.dirname(os.path.abspath(__file__))
req_file = os.path.join(root_dir, 'requirements.txt')
with open(req_file) as f:
    requirements = f.read().splitlines()

version = __import__('mlat').__version__

setup(
    name='mlat-toolkit',
    version=version,
    description=(
        'Finite multiplicative lattices: prime spectra, series and '
        'hyperabelian conditions for groups, rngs and skew braces'
    ),
    packages=find_packages(exclude=['tests']),
    entry_points={
        'console_scripts': [
            'mlat=mlat.cli:cli',
        ],
    },
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=requirements
)
