"""
Trilist
-------

Trilist lists the triangles of large undirected graphs using edges oriented by a
vertex ordering.

It computes the costs an ordering induces on the two neighborhood intersection
algorithms, provides orderings that keep these costs low and checks the hardness
constructions behind the cost minimization problems on small instances.

"""

from setuptools import setup, find_packages
import re

with open('trilist/version.py') as file:
    version = re.search(r"__version__ = '(.*)'", file.read()).group(1)

setup(
    name='Trilist',
    version=version,
    description='Ordering-aware triangle listing for large graphs',
    long_description=__doc__,

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],

    packages=find_packages(exclude=['tests']),
    python_requires='>=3.8',

    install_requires=[
        'Click>=7.0',
        'colorlog>=4.0.2',
        'networkx>=2.2',
        'numpy>=1.17',
        'ruamel.yaml>=0.15.83',
    ],

    entry_points={
        'console_scripts': [
            'trilist=trilist.scripts.cli:cli',
        ],
    },
)
