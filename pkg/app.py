import logging

from dotenv import load_dotenv
from flask import Flask
from flask.cli import FlaskGroup

from commands import commands_bp
from config import Config

load_dotenv()


def create_app(config_class: type[Config] = Config) -> Flask:
    app = Flask(__name__)
    app.config.from_object(config_class)

    logging.basicConfig(
        level=app.config["LOG_LEVEL"],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(app.config["LOG_LEVEL"])

    app.register_blueprint(commands_bp)
    return app


cli = FlaskGroup(create_app=create_app)


if __name__ == "__main__":
    cli()
