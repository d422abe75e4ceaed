import ast
import io

from setuptools import find_packages, setup


def read_version(path='aperiodica/__init__.py'):
    with open(path) as f:
        for line in f:
            if line.startswith('__version__'):
                return ast.parse(line).body[0].value.s
    return 'unknown'


with io.open('README.md', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='aperiodica',
    version=read_version(),
    description='Exact inflation tilings and aperiodic order analysis',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='quasicrystal tiling penrose ammann-beenker pinwheel delone',
    packages=find_packages(),
    python_requires='>=3.6',
    install_requires=[
        'six>=1.14,<2',
        'psutil==5.6.6',
        'numpy>=1.17',
        'scipy>=1.4',
    ],
    extras_require={
        'docs': ['Sphinx==1.5.2', ],
        'testing': [
            'flake8==3.7.8',
            'flake8-import-order==0.18.1',
            'flake8-print==3.1.0',
            'coverage==4.0.3',
            'testfixtures==4.7.0',
            'mock==1.3.0'],
    },
    author='aperiodica Contributors',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU Lesser General Public License v2 (LGPLv2)',  # noqa
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
    ],
    scripts=[
        'bin/aperiodica',
    ],
)
