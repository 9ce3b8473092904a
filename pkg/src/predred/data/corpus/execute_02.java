public void f() throws BuildException {
    if (file == null) {
        throw new BuildException("file attribute is required");
    }
    log("Processing " + file.getName());
    process(file);
}
