import os

from setuptools import setup, find_packages

dir_path = os.path.dirname(os.path.realpath(__file__))

with open(os.path.join(dir_path, 'src', 'switchsep', 'version.py')) as fp:
    exec(fp.read())


def read_requirements_file(filename):
    req_file_path = '%s/%s' % (dir_path, filename)
    with open(req_file_path) as f:
        return [line.strip() for line in f]


packages = find_packages('src')
# Ensure that we don't pollute the global namespace.
for p in packages:
    assert p == 'switchsep' or p.startswith('switchsep.')

setup(
    name='switchsep',
    version=__version__,
    license='MIT',
    packages=packages,
    package_dir={'': 'src'},
    python_requires='>=3.7',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=read_requirements_file('requirements.txt'),
    entry_points={
        'console_scripts': ['switchsep=switchsep.cli.main:main'],
    },
)
