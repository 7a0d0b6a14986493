"""Entry point for CLI."""

from precy_bench.cli.app import app

if __name__ == "__main__":
    app()
