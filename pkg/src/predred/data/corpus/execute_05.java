@Override
public void f() throws BuildException {
    System.out.println("starting" + line);
    log.debug("cache miss");
    validate();
    getProject().setProperty(property, value);
}
