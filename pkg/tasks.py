import os
from sys import platform

from invoke import task

ROOT = os.path.dirname(os.path.realpath(__file__))

# Python commands's outputs are not rendering properly. Setting pty for *Nix system and
# "PYTHONUNBUFFERED" env var for Windows at True.
if platform == 'win32':
    PLATFORM_ARG = dict(env={'PYTHONUNBUFFERED': 'True'})
else:
    PLATFORM_ARG = dict(pty=True)


# Django shorthands
@task
def manage(ctx, command):
    """Shorthand to manage.py. inv manage \"[COMMAND] [ARG]\""""
    with ctx.cd(ROOT):
        ctx.run(f"python manage.py {command}", **PLATFORM_ARG)


@task
def example(ctx):
    """Solve the four-dimensional example at eta = 1/2"""
    manage(ctx, "solve --problem docs/examples/four_dimensional.json --eta 0.5")


@task
def census(ctx, cos2theta1=0.75, cos2theta2=0.25):
    """Print the case census for a pair of angles"""
    manage(ctx, f"census --cos2theta1 {cos2theta1} --cos2theta2 {cos2theta2}")


# Tests
@task
def test(ctx):
    """Run flake8 and the python tests"""
    test_python(ctx)


@task
def test_python(ctx):
    """Run python tests"""
    print("* Running flake8")
    ctx.run("python -m flake8 tasks.py manage.py discern/", **PLATFORM_ARG)
    print("* Running tests")
    manage(ctx, "test --settings=discern.settings --configuration=Testing")


@task
def coverage(ctx):
    """Run the python tests under coverage"""
    with ctx.cd(ROOT):
        ctx.run("coverage run --source=discern manage.py test --settings=discern.settings --configuration=Testing",
                **PLATFORM_ARG)
        ctx.run("coverage report -m", **PLATFORM_ARG)


# Pip-tools
@task
def pip_compile(ctx, command):
    """Shorthand to pip-tools. inv pip-compile \"[COMMAND] [ARG]\""""
    with ctx.cd(ROOT):
        ctx.run(f"pip-compile {command}", **PLATFORM_ARG)


@task
def pip_compile_lock(ctx):
    """Lock prod and dev dependencies"""
    with ctx.cd(ROOT):
        ctx.run("pip-compile", **PLATFORM_ARG)
        ctx.run("pip-compile dev-requirements.in", **PLATFORM_ARG)


@task
def pip_sync(ctx):
    """Sync your python virtualenv"""
    with ctx.cd(ROOT):
        ctx.run("pip-sync requirements.txt dev-requirements.txt", **PLATFORM_ARG)
