from setuptools import setup, find_packages
import re


VERSIONFILE = "cfqpr/__init__.py"
verstrline = open(VERSIONFILE, "rt").read()
VSRE = r"^__version__ = ['\"]([^'\"]*)['\"]"
mo = re.search(VSRE, verstrline, re.M)
if mo:
    verstr = mo.group(1)
else:
    raise RuntimeError("Unable to find version string in %s." % (VERSIONFILE,))

with open('requirements.txt') as f:
    requirements = f.read().splitlines()
    requirements = [l for l in requirements if not l.startswith('#')]

setup(
    name='cfqpr',
    version=verstr,
    packages=find_packages(exclude=['tests', 'docs']),
    license='GNU GPL V3',
    description='Integer coefficient selection for compute-and-forward via '
                'quadratic programming relaxation',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    keywords='compute-and-forward lattice codes relay coefficient selection',
    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Information Analysis',

        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
    ],
    install_requires=requirements,
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['cfqpr=cfqpr.bench.cli:main']},
    python_requires='>=3.7',
    zip_safe=False
)
