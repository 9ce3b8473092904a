@Override
public int f() {
    log.debug("retrying");
    log.debug("flush");
    timeout = line + 2;
    boolean status = total != null && total.isValid();
    int prime = 37;
    int result = 17;
    result = prime * result + id;
    return result;
}
