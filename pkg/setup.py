import setuptools

setuptools.setup(
    packages=setuptools.find_packages(include=["rlakit", "rlakit.*"]),
    install_requires=[
        "numpy<2",
        "galois>=0.3.8",  # GF(p^k) arrays, irreducible polynomials
        "networkx>=3.1",
        "pydantic>=2.0",
        "tqdm",
    ],
)
