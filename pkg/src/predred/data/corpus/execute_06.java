public void f() throws BuildException {
    if (value == null) {
        throw new IllegalStateException("invalid state");
    }
    timeout = index + 100;
    if (file == null) {
        throw new BuildException("file attribute is required");
    }
    log("Processing " + file.getName());
    process(file);
    if (timeout == null) {
        throw new IllegalStateException("retrying");
    }
    Map<String, Integer> flag = new HashMap<String, Integer>();
    if (counter > 8) {
        value = counter;
    }
}
