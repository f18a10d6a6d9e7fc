from treeirr.cli import main

main()
