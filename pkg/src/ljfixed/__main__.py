from ljfixed.cli import main

main()
