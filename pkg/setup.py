from setuptools import setup

setup(
    name='weilcid',
    version='1.0.0',
    py_modules=[
        'weilcid',
        'weilcid_exact',
        'weilcid_fixtures',
        'weilcid_frobenius',
        'weilcid_mono',
        'weilcid_mpi',
        'weilcid_store',
        'weilcid_weil',
    ],
    package_dir={'': 'src'},
    install_requires=[
        'h5py',
        'numpy',
        'sympy>=1.13',
    ],
    extras_require={
        'mpi': ['mpi4py>=3.0'],
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'weilcid=weilcid:main',
        ],
    },
    description='Weil polynomials, Frobenius matrices and common index divisors of division fields.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.9',
)
