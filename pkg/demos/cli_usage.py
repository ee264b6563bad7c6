"""Drive the command-line tool from Python; the same calls work in a shell."""
# %%
from symplectic_csp.cli import main

main(["enumerate", "--shape", "2,1", "--m", "2"])
main(["enumerate", "--shape", "1", "--m", "2", "--format", "table"])

# %%
code = main(["csp", "--shape", "2,1", "--m", "3", "--format", "table"])
print("exit code", code)

# %%
main(["check", "--shape", "2,1", "--m", "2", "--format", "table"])
