"""Entry point for python -m distcrit."""

from .cli import main

if __name__ == "__main__":
    main()
