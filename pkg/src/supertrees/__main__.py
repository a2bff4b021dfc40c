from supertrees.cli import main

main()
