#!/usr/bin/env python
# coding=utf-8
#
# dppf documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import ast
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from typing import Dict, List  # noqa

# -- General configuration ---------------------------------------------

extensions = [
    "sphinx_copybutton",
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "numpydoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "myst_parser",
]

# Do not copy prompts in code.
copybutton_prompt_text = r">>> |\.\.\. |\$ |In \[\d*\]: | {2,5}\.\.\.: | {5,8}: "
copybutton_prompt_is_regexp = True

# Do not add class members in generated docs
numpydoc_show_class_members = False

# Add class content from main and derived classes
autoclass_content = "both"

# build the templated autosummary files
autosummary_generate = True

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

# General information about the project.
project = "dppf"
copyright = "2026, dppf contributors"
author = "dppf contributors"

with open("../dppf/__init__.py") as f:
    for line in f:
        if line.startswith("__version__"):
            version = ast.parse(line).body[0].value.value  # type: ignore
            break

release = version

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
exclude_trees: List[str] = []

pygments_style = "sphinx"
todo_include_todos = False

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
}

# -- Options for HTML output -------------------------------------------

html_theme = "sphinx_book_theme"
html_theme_options = {
    "use_download_button": False,
    "single_page": False,
    "use_fullscreen_button": False,
    "home_page_in_toc": True,
}
html_static_path = ["_static"]
htmlhelp_basename = "dppfdoc"

# -- Options for LaTeX output ------------------------------------------

latex_elements: Dict[str, str] = {}
latex_documents = [
    (master_doc, "dppf.tex", "dppf Documentation", author, "manual"),
]

man_pages = [(master_doc, "dppf", "dppf Documentation", [author], 1)]

texinfo_documents = [
    (
        master_doc,
        "dppf",
        "dppf Documentation",
        author,
        "dppf",
        "Computations with diagonal p-permutation functors of small finite groups.",
        "Miscellaneous",
    ),
]
