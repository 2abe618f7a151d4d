from gnomon.cli import main

raise SystemExit(main())
