"""
formale - exact formal group computations for elliptic curves over Q.
"""

__version__ = "0.1.0"
