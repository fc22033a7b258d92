from simplexcenters.main import app

app(prog_name="simplexcenters")
