void f() throws BuildException { }
