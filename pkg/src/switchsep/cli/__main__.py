from switchsep.cli.main import main

main()
