boolean f(Object obj) { return false; }
