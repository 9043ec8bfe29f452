#!/usr/bin/python3
"""Command-line entry point of the dirichletlsa package.

Run with --help for the list of commands.

"""

################################################################################
#### IMPORT MODULES/PACKAGES ###################################################
#
#### STANDARD PACKAGES #########################################################
import sys
#
#### DIRICHLETLSA ##############################################################
try:
    # For when dirichletlsa has been installed:
    from dirichletlsa import cli
except ImportError:
    # Development environment: We're in the bin directory of the package:
    sys.path.append('..')
    from dirichletlsa import cli


################################################################################
#### MAIN FUNCTION #############################################################
#
def main():
    """Run the command given on the command line and exit with its code."""
    sys.exit(cli.main())


################################################################################
#### EXECUTE ###################################################################
#
if __name__ == '__main__':
    main()
