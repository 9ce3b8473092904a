public void f() throws BuildException {
    validate();
    getProject().setProperty(property, value);
}
