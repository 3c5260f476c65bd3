from setuptools import setup, find_packages

__version__ = "0.0.0"
exec(open('latticeqm/_version.py').read())

setup(
    name="latticeqm",
    version=__version__,
    packages=find_packages(exclude=["tests"]),
    install_requires=['numpy',
                      'scipy',
                      'numba',
                      'h5py',
                      'Click',
                      'pandas'],
    extras_require={"test": ["pytest"],
                    "doc": ["sphinx", "sphinx_rtd_theme", "sphinx-click"]},
    # command
    entry_points='''
        [console_scripts]
        latticeqm=latticeqm.commands.latticeqm:cli
    ''',
    # metadata
    keywords=["quantum mechanics", "finite lattice", "discrete Fourier transform", "mutually unbiased bases"],
    description="Position and momentum on a finite cyclic lattice, with verification suites",
    license="BSD2")
