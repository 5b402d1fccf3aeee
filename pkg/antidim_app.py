"""
antidim - lanzador del CLI.

    python antidim_app.py analyze --graph6 Ch
    python antidim_app.py family --name petersen | python antidim_app.py oracle
    python antidim_app.py classify --enumerate 7
"""
from cli.app import main


if __name__ == "__main__":
    main()
