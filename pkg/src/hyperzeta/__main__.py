from hyperzeta.cli import main

main()
