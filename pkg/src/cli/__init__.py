from src.cli.main import build_parser, main
