# Test suite for siltlab
