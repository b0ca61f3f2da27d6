import setuptools

VERSION = '0.1.0'

with open("README.md", "r", encoding="utf8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="qsmooth",
    version=VERSION,
    description="Exact verification of q-deformed algebras: normal forms, "
                "strong connections and GWA smoothness",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='Apache License 2.0',
    keywords=["computer algebra", "rewriting", "quantum groups",
              "noncommutative geometry", "sympy"],
    packages=setuptools.find_packages(),
    install_requires=[
        'sympy>=1.12',
        'numpy',
        'GitPython',
        'ply',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['qsmooth=qsmooth.cli:main'],
    },
    python_requires='>=3.8',
    classifiers=[
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
)
