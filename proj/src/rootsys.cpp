namespace orbitcone {}
