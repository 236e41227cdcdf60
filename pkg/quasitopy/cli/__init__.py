from quasitopy.cli.main import main

__all__ = ["main"]
