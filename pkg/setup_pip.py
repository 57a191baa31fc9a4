# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
import os


with open(os.path.join(os.path.dirname(__file__), 'sedatom/VERSION')) as f:
      version = f.read().strip()

def readme():
    with open('README.rst') as f:
        return f.read()

with open('requirements.txt') as f:
    install_requires = f.read().splitlines()


setup(name='sedatom',
      version=version,
      description='Classical hydrogen atom in stochastic electrodynamics - zero-point field, radiation reaction and radial densities',
      long_description=readme(),
      keywords='stochastic electrodynamics zero-point field hydrogen radiation reaction',
      license='MIT',
      python_requires='>=3.8',
      install_requires=install_requires,
      packages=find_packages(exclude=['tests', 'tests.*']),
      include_package_data=True,
      package_data={'sedatom': ['VERSION']},
      entry_points={'console_scripts': ['sedatom=sedatom.cli.main:main']},
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: MIT License',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Physics'
          ],
      zip_safe=False)
