"""
========
Commands
========

Command line front end: one class per subcommand.

"""

# Category description for the command registry

NAME = "ReachHom"

DESCRIPTION = "Reachability homology of directed graphs"

PRIORITY = 1
