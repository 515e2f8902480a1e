from jacotype.cli import main

main()
