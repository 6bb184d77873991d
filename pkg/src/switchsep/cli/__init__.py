from .main import CliReport, build_parser, main, run
