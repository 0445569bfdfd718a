//! Lambda-Pi-modulo terms, signatures, translation and checking.
