void f() { super.onCreate(null); }
