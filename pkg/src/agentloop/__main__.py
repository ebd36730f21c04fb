"""Allow ``python -m agentloop`` to behave like the ``agentloop`` script."""

from .cli import main

main()
