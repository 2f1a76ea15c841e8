from setuptools import setup
import codecs
import os


VERSION = '0.3.0'
AUTHOR_NAME = 'The wlplanar developers'

_here = os.path.abspath(os.path.dirname(__file__))


def read(relative_path):
    """Reads file at relative path, returning contents as string."""
    with codecs.open(os.path.join(_here, relative_path), "rb", "utf-8") as f:
        return f.read()


setup(name='wlplanar',
      packages=['wlplanar'],
      version=VERSION,
      description=('Weisfeiler-Leman refinement, separator decompositions, '
                   'Tutte embeddings and an isomorphism oracle for small '
                   'planar graphs.'),
      long_description=read("README.md"),
      long_description_content_type='text/markdown',
      author=AUTHOR_NAME,
      license='MIT',
      install_requires=['numpy', 'svgwrite', 'scipy', 'networkx'],
      extras_require={'test': ['hypothesis']},
      entry_points={'console_scripts': ['wlplanar=wlplanar.cli:main']},
      python_requires='>=3.8',
      platforms="OS Independent",
      keywords=['weisfeiler-leman', 'color refinement', 'graph isomorphism',
                'planar graphs', 'tutte embedding', 'fixing number'],
      classifiers=[
            "Development Status :: 4 - Beta",
            "Intended Audience :: Science/Research",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
            "Programming Language :: Python :: 3",
            "Programming Language :: Python :: 3.8",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: 3.12",
            "Programming Language :: Python :: 3.13",
            "Topic :: Scientific/Engineering",
            "Topic :: Scientific/Engineering :: Mathematics",
            "Topic :: Software Development :: Libraries :: Python Modules",
            ],
      )
