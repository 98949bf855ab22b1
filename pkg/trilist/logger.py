import logging


def get_logger(name):
    """ Helper function to return the logger of a trilist module

    The handlers and levels are set by the logging section of the configuration,
    which the command line client applies on start-up.

    Args:
        name (str): The name of the logger. Typically: __name__.

    Returns:
        Logger: A logger object for sending messages to the logging system
    """
    return logging.getLogger(name)
