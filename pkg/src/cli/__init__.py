"""
Command line front end and SVG rendering.

Components:
- main: argparse verbs spectrum, bands, sweep, bracket, delta, render
- render: deterministic SVG flux diagrams
"""

from src.cli.main import HANDLERS, VERBS, build_parser, load_source, main
from src.cli.render import SVG, SvgStyle, render_svg

__all__ = ["HANDLERS", "VERBS", "build_parser", "load_source", "main", "SVG", "SvgStyle", "render_svg"]
