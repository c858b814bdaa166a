from setuptools import setup, find_packages


setup(
    name='qtpc',
    version='0.1.0',
    description='Quantum tensor product codes: construction, verification '
                'and multiple-burst decoding',
    packages=find_packages(exclude=['tests']),
    package_data={'qtpc': ['data/*/*']},
    include_package_data=True,
    python_requires='>=3.9',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: Apache Software License',
    ],
    install_requires=[
        'numpy',
        'scipy',
        'pyyaml',
        'tqdm',
        'galois',
    ],
    extras_require={
        'scripts': ['matplotlib'],
        'doc': ['sphinx', 'furo', 'numpydoc']
    },
    entry_points={
        'console_scripts': ['qtpc=qtpc.cli:main'],
    },
)
