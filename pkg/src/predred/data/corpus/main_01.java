void f(String args) { }
