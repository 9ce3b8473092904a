public void f() throws BuildException {
    for (String counter : line) {
        process(counter);
    }
    if (file == null) {
        throw new BuildException("file attribute is required");
    }
    log("Processing " + file.getName());
    process(file);
    int current = 2;
}
