String f() { StringBuilder sb; return null; }
