"""``python -m kfib_pillai``."""

from ._cli.main import main

main()
