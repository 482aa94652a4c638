from setuptools import setup

setup(
    name='grassmann',
    version='0.1',
    packages=['grassmann'],
    url='https://github.com/renero/class_notebooks/tree/master/src',
    license='MIT',
    author='renero',
    author_email='',
    description='Exact checks on Grassmann graphs and their local graphs',
    install_requires=['numpy', 'scipy', 'pandas', 'joblib', 'networkx',
                      'sympy'],
    python_requires='>=3.8',
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['grassmann=grassmann.cli:main']},
)
