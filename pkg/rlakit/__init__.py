from threading import local

import numpy as np


class Context(local):
    def __init__(self) -> None:
        self._budget_level = None

        self.seed: int = 42
        """
        Seed for every randomized subroutine (isomorphism search, Fitting splits, projective splitting).
        Identical inputs and seeds give identical results.
        """

        self.enumeration_budget: int = 10**7
        self.u0_budget: int = 729
        """
        Largest `p^n` for which the tables of U_0(L) (regular representation, radical, socle) are built.
        """
        self.heller_budget: int = 4096
        """
        Largest dimension of a free module built as a cover (Heller shifts, Hom presentations, induction).
        """
        self.decompose_budget: int = 512
        self.exhaustive_search_limit: int = 10**6
        """
        `q^h` below which the search for an invertible element in a Hom space of dimension `h` is exhaustive.
        Above it, `isomorphism_samples` random elements are tried.
        """
        self.isomorphism_samples: int = 64
        self.endotrivial_tensor_limit: int = 256
        """
        Largest `dim(M)^2` for which endotriviality is tested on `M (x) M*`. Larger modules are certified by
        the isomorphism checks of the syzygy walk and the classifier instead.
        """
        self.walk_depth: int = 8
        self.show_progress: bool = False

        self.budget_level = "balanced"

    def rng(self, salt: int = 0) -> np.random.Generator:
        "A fresh generator derived from `seed`, so that independent calls do not share state."
        return np.random.default_rng([self.seed, salt])

    @property
    def budget_level(self):
        return self._budget_level

    @budget_level.setter
    def budget_level(self, level):
        self._budget_level = level

        if level == "low":
            self.enumeration_budget = 10**6
            self.u0_budget = 243
            self.heller_budget = 1024
            self.decompose_budget = 128
            self.exhaustive_search_limit = 10**4
        elif level == "balanced":
            self.enumeration_budget = 10**7
            self.u0_budget = 729
            self.heller_budget = 4096
            self.decompose_budget = 512
            self.exhaustive_search_limit = 10**6
        elif level == "high":
            self.enumeration_budget = 10**8
            self.u0_budget = 2187
            self.heller_budget = 16384
            self.decompose_budget = 2048
            self.exhaustive_search_limit = 10**7
        else:
            raise RuntimeError(f"unknown budget level: {level}")
