# -*- coding: utf-8 -*-

import os
import sys
from shutil import rmtree
from setuptools import setup, find_packages, Command

from noblemeans.__about__ import __version__
from noblemeans.__about__ import __author__


here = os.path.abspath(os.path.dirname(__file__))


class PublishCommand(Command):
    """Support setup.py publish."""

    description = 'Build and publish package in Pypi.'
    user_options = []

    @staticmethod
    def print_status(msg):
        """Prints message in bold and yellow."""
        print('\033[1;33m{m}\033[0m'.format(m=msg))

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        try:
            self.print_status('Removing previous builds…')

            rmtree(os.path.join(here, 'dist'))
            rmtree(os.path.join(here, 'build'))

        except OSError:
            pass

        self.print_status('Running the test suite…')
        if os.system('{python} -m unittest discover -s tests -t .'.format(python=sys.executable)):
            sys.exit('Tests failed, nothing was published.')

        self.print_status('Build Source and Wheel distribution…')
        os.system('{python} setup.py sdist bdist_wheel'.format(python=sys.executable))

        self.print_status('Uploading the package to PyPi via Twine…')
        os.system('twine upload --config-file .pypirc --repository pypi dist/*')

        sys.exit()


with open(os.path.join(here, 'README.md'), mode='r', encoding='utf-8') as f:
    long_description = '\n' + f.read()


setup(
    name='noblemeans',
    version=__version__,
    description='Random noble means substitutions: words, entropy, frequencies, geometry and diffraction',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT License',
    author=__author__,
    packages=find_packages(
        exclude=('tests',)
    ),
    install_requires=[
        'numpy>=1.20',
        'mpmath',
        'beautifulsoup4',
        'colorama'
    ],
    entry_points={
        'console_scripts': [
            'noblemeans=noblemeans.cli:main'
        ]
    },
    zip_safe=False,
    python_requires='>=3.8',
    keywords=[
        'noblemeans', 'substitution', 'random-substitution', 'fibonacci',
        'symbolic-dynamics', 'quasicrystals', 'cut-and-project', 'diffraction',
        'topological-entropy', 'aperiodic-order'
    ],
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics'
    ],
    # setup.py publish support
    cmdclass={
        'publish': PublishCommand
    }
)
