"""Tests for API endpoints."""

Z3_TEXT = "name: Z3\ngens: a b\nrels: a b^-1, a^3\n"


class TestCatalogAPI:
    """Tests for family and catalog endpoints."""

    async def test_list_families(self, client):
        """Test listing catalog families with aliases."""
        response = await client.get("/api/groups/families")

        assert response.status_code == 200
        families = {f["name"]: f for f in response.json()}
        assert "wb" in families["WeldedBraid"]["aliases"]
        assert len(families) == 7

    async def test_catalog(self, client):
        """Test fetching a catalog presentation."""
        response = await client.post("/api/groups/catalog", json={"family": "wb", "n": 3})

        assert response.status_code == 200
        data = response.json()
        assert data["name"] == "WB_3"
        assert data["generators"] == ["s1", "s2", "r1", "r2"]

    async def test_unknown_family(self, client):
        """Test unknown families are 404."""
        response = await client.post("/api/groups/catalog", json={"family": "nope"})
        assert response.status_code == 404

    async def test_too_few_strands(self, client):
        """Test invalid strand counts are 400."""
        response = await client.post("/api/groups/catalog", json={"family": "wb", "n": 1})
        assert response.status_code == 400


class TestDeriveAPI:
    """Tests for derivation and invariants."""

    async def test_derive_flat(self, client):
        """Test the derived FVB_3' presentation."""
        response = await client.post("/api/groups/derive", json={"family": "fvb", "n": 3})

        assert response.status_code == 200
        data = response.json()
        assert len(data["presentation"]["generators"]) == 13
        assert data["relator_slots"] == 28
        assert sorted(data["trivial_generators"]) == ["a1", "b1", "f1"]

    async def test_derive_needs_window(self, client):
        """Test wb without a window is 400."""
        response = await client.post("/api/groups/derive", json={"family": "wb"})

        assert response.status_code == 400
        assert "MissingWindowError" in response.json()["detail"]

    async def test_abelianize(self, client):
        """Test abelian invariants of posted text."""
        response = await client.post("/api/groups/abelianize", json={"presentation": Z3_TEXT})

        assert response.status_code == 200
        data = response.json()
        assert data["text"] == "Z/3"
        assert data["torsion"] == [3]
        assert not data["perfect"]

    async def test_abelianize_bad_text(self, client):
        """Test malformed presentations are 400."""
        response = await client.post("/api/groups/abelianize", json={"presentation": "gens: a\nrels: b\n"})
        assert response.status_code == 400


class TestSimplifyAPI:
    """Tests for Tietze simplification."""

    async def test_greedy(self, client):
        """Test greedy simplification returns its moves."""
        response = await client.post("/api/groups/simplify", json={"presentation": Z3_TEXT})

        assert response.status_code == 200
        data = response.json()
        assert data["name"] == "simplify"
        assert data["moves"][0].startswith("eliminate")
        assert len(data["result"]["generators"]) == 1

    async def test_missing_script(self, client):
        """Test unknown script names are 404."""
        response = await client.post(
            "/api/groups/simplify", json={"presentation": Z3_TEXT, "script": "no-such-script"}
        )
        assert response.status_code == 404

    async def test_negative_budget(self, client):
        """Test negative budgets fail validation."""
        response = await client.post("/api/groups/simplify", json={"presentation": Z3_TEXT, "budget": -1})
        assert response.status_code == 422


class TestVerifyAPI:
    """Tests for the verification endpoints."""

    async def test_list_scenarios(self, client):
        """Test scenarios are listed in id order."""
        response = await client.get("/api/groups/scenarios")

        assert response.status_code == 200
        ids = [s["id"] for s in response.json()]
        assert ids == sorted(ids)
        assert "thm-1.1-perfect" in ids

    async def test_verify(self, client):
        """Test running one scenario."""
        response = await client.post("/api/groups/verify", json={"filter": "abelianization-wb"})

        assert response.status_code == 200
        reports = response.json()
        assert len(reports) == 1
        assert reports[0]["status"] == "passed"

    async def test_verify_unknown_filter(self, client):
        """Test filters matching nothing are 404."""
        response = await client.post("/api/groups/verify", json={"filter": "nonexistent"})
        assert response.status_code == 404
