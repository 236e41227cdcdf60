#
# quasitopy documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.

from datetime import datetime
import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

# -- General configuration -----------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "numpydoc",  # handle NumPy documentation formatted docstrings
]

exclude_patterns = ["**.ipynb_checkpoints"]

autosummary_generate = True
autodoc_typehints = "none"

numpydoc_attributes_as_param_list = False
numpydoc_show_class_members = False

source_suffix = [".rst"]

source_encoding = "utf-8"

master_doc = "index"

project = "quasitopy"
copyright = f"2021-{datetime.now().year}, the quasitopy development team"

import quasitopy  # isort:skip

version = str(quasitopy.__version__)

release = version

language = "en"

pygments_style = "sphinx"

html_theme = "pydata_sphinx_theme"

htmlhelp_basename = "quasitopy"

intersphinx_mapping = {
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/pandas-docs/stable/", None),
    "python": ("https://docs.python.org/3/", None),
}
