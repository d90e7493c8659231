from .main import main, render, run
from .parser import parse_element, parse_poly

__all__ = ["main", "render", "run", "parse_element", "parse_poly"]
