import logging
import utils.logging

logger = logging.getLogger(utils.logging.getLoggerName(__name__))

OUTPUT_FORMATS = ["text", "json", "yaml", "csv"]

class Request:
    """ The parameters of the command being executed.  One command runs per process. """

    command:str = None
    format:str = "text"
    parameters:dict = {}
    artifact_version:str = None

    @classmethod
    def set(cls, request_parameters:dict, artifact_version:str = None) -> None:

        cls.command = request_parameters.get("command", None)
        cls.format = request_parameters.get("format", None) or "text"
        if cls.format not in OUTPUT_FORMATS:
            logger.warning(f"Unknown format '{cls.format}', defaulting to 'text'")
            cls.format = "text"
        # Everything except command/format is a command parameter, unset flags are left out
        cls.parameters = {key:value for key, value in request_parameters.items() if key not in ["command", "format"] and value is not None}
        cls.artifact_version = artifact_version

        logger.info(f"motzkinware called with parameters = '{ request_parameters }'")

    @classmethod
    def get(cls) -> dict:
        return {
            "command": cls.command,
            "format": cls.format,
            "parameters": cls.parameters
        }
