from setuptools import Extension, setup

# The keccak-256 core is a C extension for speed; shardtrie._keccak_py is the
# pure-Python fallback used when compilation is unavailable.
setup(
    ext_modules=[
        Extension(
            "shardtrie._keccak",
            sources=["src/shardtrie/_keccak.c"],
            extra_compile_args=["-O3"],
            optional=True,
        )
    ]
)
