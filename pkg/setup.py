from glob import glob
from os.path import basename, splitext

from setuptools import find_packages, setup

requires = ['setuptools-scm', 'sympy>=1.9']

setup(
    name='arcs.nashseq',
    use_scm_version={
        'write_to': 'src/arcs/__nashseq_version__.py',
        'fallback_version': '0.0.0',
    },
    setup_requires=['setuptools_scm'],
    author='nashseq developers',
    description='Nash sequences of singular germs along arcs, standard bases and motivic volumes.',
    long_description=open("README.rst").read(),
    zip_safe=False,
    license='GNU General Public License v3 (GPLv3)',
    platforms='any',
    packages=find_packages('src'),
    package_dir={'': 'src'},
    entry_points={'console_scripts': ['nashseq = arcs.nashseq:main']},
    py_modules=[splitext(basename(path))[0] for path in glob('src/*.py')],
    include_package_data=True,
    install_requires=requires,
    python_requires='>=3.8',
    classifiers=[
        # complete classifier list: http://pypi.python.org/pypi?%3Aaction=list_classifiers
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: Unix',
        'Operating System :: POSIX',
        'Operating System :: Microsoft :: Windows',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords=['arc space', 'Nash sequence', 'standard basis', 'Hilbert-Samuel', 'motivic integration', 'singularities'],
)
