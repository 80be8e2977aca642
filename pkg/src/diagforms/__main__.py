from diagforms.cli import main

main()
