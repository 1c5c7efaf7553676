from conestack.cli import entrypoint

entrypoint()
