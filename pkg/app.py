import sys

from onm_model.appView import app
from onm_model.cli import main

if __name__ == "__main__": # pragma: no cover
    if sys.argv[1:2] == ["serve"]:
        import uvicorn
        uvicorn.run(app, host="0.0.0.0", port=8080)
    else:
        sys.exit(main())
